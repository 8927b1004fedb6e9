public class BubbleSortSwap {
public static void bubbleSort(int[] numbers) {
    boolean swapped = true;
    while (swapped) {
        swapped = false;
        for (int index = 0; index < numbers.length - 1; index++) {
            if (numbers[index] > numbers[index + 1]) {
                int held = numbers[index];
                numbers[index] = numbers[index + 1];
                numbers[index + 1] = held;
                swapped = true;
            }
        }
    }
}
}
